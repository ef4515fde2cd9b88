public class DispatchController implements ActionListener {
  JButton save;
  JButton load;
  Store store;

  public void actionPerformed(ActionEvent evt) {
    treatEvent(evt);
  }

  private void treatEvent(ActionEvent evt) {
    Object src = evt.getSource();
    if (src == save) {
      store.save();
    } else if (src == load) {
      store.load();
    }
  }
}
