public class SliceController implements ActionListener {
  boolean selectedText;
  TextPane output;

  public void actionPerformed(ActionEvent evt) {
    Object src = evt.getSource();
    if (src instanceof JMenuItem) {
      String s = evt.getActionCommand();
      if (s.equals("Copy")) {
        if (selectedText)
          output.copy();
      } else if (s.equals("Cut")) {
        output.cut();
      }
      output.done();
    }
  }
}
