public class CanvasMouseListener implements MouseListener {
  public void mousePressed(MouseEvent e) {
    if (e.getClickCount() == 1) {
      selectElement(e);
    } else if (e.getButton() == MouseEvent.BUTTON3) {
      showContextMenu(e);
    } else if (e.getClickCount() > 1) {
      openElement(e);
    }
  }

  public void mouseClicked(MouseEvent e) {
  }

  public void mouseReleased(MouseEvent e) {
  }

  public void mouseEntered(MouseEvent e) {
  }

  public void mouseExited(MouseEvent e) {
  }
}
